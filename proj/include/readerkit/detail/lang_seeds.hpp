#pragma once

// Seed text for the character-trigram language profiles. Languages written
// in a script of their own are identified by script and need no seed.

#include <string_view>

namespace readerkit::detail {

struct LangSeed {
  std::string_view code;
  std::string_view text;
};

inline constexpr LangSeed kLangSeeds[] = {
    {"en",
     "The weather was cold this morning, so we stayed inside and read the news. Most of the people who live "
     "in this town work at the harbour or in the small shops along the main street. When the children come "
     "home from school they usually play in the park until their parents call them for dinner. There is a "
     "library near the station where you can borrow books without paying anything. I think that the new "
     "bridge will be finished before the end of the year, but nobody really knows. Our neighbours have "
     "always been friendly and they often help us with the garden. If you want to learn a language you "
     "should practise every day and not be afraid of making mistakes. The government announced that taxes "
     "would rise again, which made many workers angry. Please write your name and address on the form and "
     "bring it back tomorrow. She said that the train would be late because of the weather. We were "
     "thinking about what could happen next and whether anything would change for the better."
     " Last summer my sister travelled across the country by bus because flights had become too "
     "expensive. She visited several old churches, spent a few nights with friends and wrote letters "
     "to everyone at home. The doctor told my father that he should walk more, drink less coffee and "
     "sleep at least seven hours each night. Since then he goes out every evening, even when it is "
     "raining, and says that he feels much better. Which of these computers would you recommend for "
     "someone who mostly writes emails?"
     " At work we are moving to a new office on the other side of the river, and everyone has to pack "
     "their own desk before Thursday. My manager keeps saying that the change will save money, though "
     "I doubt it. In autumn the forest behind our house turns yellow and red, and on quiet mornings "
     "you can hear deer walking between the trees. Yesterday my phone stopped working, so I had to "
     "ask a colleague to lend me hers until the shop could repair it. Honestly, I never understood "
     "why these devices break so easily."},
    {"fr",
     "Le temps était froid ce matin, alors nous sommes restés à la maison pour lire le journal. La plupart "
     "des gens qui habitent dans cette ville travaillent au port ou dans les petits magasins de la rue "
     "principale. Quand les enfants rentrent de l'école, ils jouent souvent dans le jardin jusqu'à ce que "
     "leurs parents les appellent pour le dîner. Il y a une bibliothèque près de la gare où l'on peut "
     "emprunter des livres sans rien payer. Je pense que le nouveau pont sera terminé avant la fin de "
     "l'année, mais personne ne le sait vraiment. Nos voisins ont toujours été très gentils et ils nous "
     "aident avec les fleurs. Si vous voulez apprendre une langue, il faut pratiquer chaque jour et ne pas "
     "avoir peur des erreurs. Le gouvernement a annoncé que les impôts vont encore augmenter, ce qui a mis "
     "beaucoup de travailleurs en colère. Elle a dit que le train aurait du retard à cause de la neige."
     " L'été dernier, ma sœur a traversé tout le pays en autobus parce que les billets d'avion "
     "étaient devenus trop chers. Elle a visité plusieurs vieilles églises, a passé quelques "
     "nuits chez des amis et a écrit des lettres à toute la famille. Le médecin a dit à mon père "
     "qu'il devait marcher davantage, boire moins de café et dormir au moins sept heures par nuit. "
     "Depuis, il sort tous les soirs, même quand il pleut, et il dit qu'il se sent beaucoup mieux. "
     "Lequel de ces ordinateurs conseilleriez-vous à quelqu'un qui écrit surtout des courriels ?"
     " Au travail, nous déménageons dans un nouveau bureau de l'autre côté du fleuve, et chacun "
     "doit ranger son propre bureau avant jeudi. Mon chef répète que ce changement nous fera "
     "économiser de l'argent, mais j'en doute. En automne, la forêt derrière notre maison devient "
     "jaune et rouge, et les matins calmes on entend des cerfs marcher entre les arbres. Hier, mon "
     "téléphone a cessé de fonctionner, alors j'ai dû demander à une collègue de me prêter le "
     "sien jusqu'à ce que le magasin puisse le réparer. Honnêtement, je n'ai jamais compris "
     "pourquoi ces appareils se cassent si facilement."},
    {"es",
     "El tiempo estaba frío esta mañana, así que nos quedamos en casa leyendo el periódico. La mayoría de "
     "las personas que viven en este pueblo trabajan en el puerto o en las pequeñas tiendas de la calle "
     "mayor. Cuando los niños vuelven de la escuela, suelen jugar en el parque hasta que sus padres los "
     "llaman para cenar. Hay una biblioteca cerca de la estación donde se pueden pedir libros sin pagar "
     "nada. Creo que el nuevo puente estará terminado antes de que acabe el año, pero nadie lo sabe con "
     "seguridad. Nuestros vecinos siempre han sido muy amables y muchas veces nos ayudan con el jardín. Si "
     "quieres aprender un idioma, tienes que practicar todos los días y no tener miedo de equivocarte. El "
     "gobierno anunció que los impuestos van a subir otra vez, lo que enfadó a muchos trabajadores. Ella "
     "dijo que el tren llegaría tarde por culpa de la lluvia y que ya no había billetes."
     " El verano pasado mi hermana cruzó todo el país en autobús porque los vuelos se habían "
     "vuelto demasiado caros. Visitó varias iglesias antiguas, pasó algunas noches con unos amigos "
     "y escribió cartas a toda la familia. El médico le dijo a mi padre que debía caminar más, "
     "tomar menos café y dormir por lo menos siete horas cada noche. Desde entonces sale todas las "
     "tardes, incluso cuando llueve, y dice que se siente mucho mejor. ¿Cuál de estos ordenadores "
     "le recomendarías a alguien que sobre todo escribe correos?"
     " En el trabajo nos mudamos a una oficina nueva al otro lado del río, y cada uno tiene que "
     "recoger su propio escritorio antes del jueves. Mi jefe repite que el cambio nos ahorrará "
     "dinero, aunque yo lo dudo. En otoño el bosque que hay detrás de nuestra casa se vuelve "
     "amarillo y rojo, y en las mañanas tranquilas se oye a los ciervos caminar entre los árboles. "
     "Ayer mi teléfono dejó de funcionar, así que tuve que pedirle a una compañera que me "
     "prestara el suyo hasta que la tienda pudiera arreglarlo. La verdad, nunca he entendido por qué "
     "estos aparatos se rompen con tanta facilidad."},
    {"pt",
     "O tempo estava frio esta manhã, por isso ficámos em casa a ler o jornal. A maioria das pessoas que "
     "vivem nesta cidade trabalha no porto ou nas pequenas lojas da rua principal. Quando as crianças "
     "voltam da escola, costumam brincar no parque até os pais as chamarem para o jantar. Há uma biblioteca "
     "perto da estação onde se podem levar livros emprestados sem pagar nada. Acho que a nova ponte vai "
     "ficar pronta antes do fim do ano, mas ninguém sabe ao certo. Os nossos vizinhos sempre foram muito "
     "simpáticos e muitas vezes ajudam-nos com o jardim. Se você quer aprender uma língua, precisa de "
     "praticar todos os dias e não ter medo de errar. O governo anunciou que os impostos vão aumentar "
     "outra vez, o que deixou muitos trabalhadores irritados. Ela disse que o comboio ia chegar atrasado "
     "por causa da chuva e que não havia mais bilhetes. Não são coisas fáceis, mas também não são impossíveis."
     " No verão passado a minha irmã atravessou o país inteiro de autocarro porque os voos tinham "
     "ficado demasiado caros. Visitou várias igrejas antigas, passou algumas noites em casa de "
     "amigos e escreveu cartas para toda a família. O médico disse ao meu pai que ele devia "
     "caminhar mais, beber menos café e dormir pelo menos sete horas por noite. Desde então ele sai "
     "todas as tardes, mesmo quando está a chover, e diz que se sente muito melhor. Qual destes "
     "computadores recomendaria a alguém que escreve sobretudo mensagens?"
     " No trabalho vamos mudar para um escritório novo do outro lado do rio, e cada um tem de "
     "arrumar a sua própria secretária antes de quinta-feira. O meu chefe continua a dizer que a "
     "mudança vai poupar dinheiro, mas eu duvido. No outono a floresta atrás da nossa casa fica "
     "amarela e vermelha, e nas manhãs calmas ouvem-se os veados a andar entre as árvores. Ontem o "
     "meu telemóvel deixou de funcionar, por isso tive de pedir a uma colega que me emprestasse o "
     "dela até a loja o conseguir arranjar. Sinceramente, nunca percebi porque é que estes "
     "aparelhos se estragam tão facilmente."},
    {"de",
     "Das Wetter war heute Morgen kalt, deshalb sind wir zu Hause geblieben und haben die Zeitung gelesen. "
     "Die meisten Menschen, die in dieser Stadt wohnen, arbeiten im Hafen oder in den kleinen Geschäften an "
     "der Hauptstraße. Wenn die Kinder aus der Schule kommen, spielen sie meistens im Park, bis ihre Eltern "
     "sie zum Abendessen rufen. Es gibt eine Bibliothek in der Nähe des Bahnhofs, wo man Bücher ausleihen "
     "kann, ohne etwas zu bezahlen. Ich glaube, dass die neue Brücke vor dem Ende des Jahres fertig sein "
     "wird, aber das weiß niemand genau. Unsere Nachbarn waren immer sehr freundlich und helfen uns oft im "
     "Garten. Wer eine Sprache lernen möchte, sollte jeden Tag üben und keine Angst vor Fehlern haben. Die "
     "Regierung hat angekündigt, dass die Steuern wieder steigen werden, worüber sich viele Arbeiter "
     "ärgern. Sie sagte, dass der Zug wegen des Schnees später ankommen würde."
     " Letzten Sommer ist meine Schwester mit dem Bus durch das ganze Land gereist, weil die Flüge "
     "zu teuer geworden waren. Sie hat mehrere alte Kirchen besucht, ein paar Nächte bei Freunden "
     "verbracht und der ganzen Familie Briefe geschrieben. Der Arzt hat meinem Vater gesagt, dass er "
     "mehr laufen, weniger Kaffee trinken und jede Nacht mindestens sieben Stunden schlafen soll. "
     "Seitdem geht er jeden Abend hinaus, auch wenn es regnet, und sagt, dass es ihm viel besser "
     "geht. Welchen dieser Rechner würden Sie jemandem empfehlen, der hauptsächlich Nachrichten "
     "schreibt?"
     " Bei der Arbeit ziehen wir in ein neues Büro auf der anderen Seite des Flusses, und jeder muss "
     "bis Donnerstag seinen eigenen Schreibtisch einpacken. Mein Chef sagt immer wieder, dass der "
     "Umzug Geld sparen wird, aber ich bezweifle das. Im Herbst wird der Wald hinter unserem Haus "
     "gelb und rot, und an ruhigen Morgen hört man die Rehe zwischen den Bäumen laufen. Gestern hat "
     "mein Handy nicht mehr funktioniert, also musste ich eine Kollegin bitten, mir ihres zu leihen, "
     "bis der Laden es reparieren konnte. Ehrlich gesagt habe ich nie verstanden, warum diese Geräte "
     "so leicht kaputtgehen."},
    {"it",
     "Il tempo era freddo stamattina, quindi siamo rimasti a casa a leggere il giornale. La maggior parte "
     "delle persone che abitano in questa città lavora al porto o nei piccoli negozi della via principale. "
     "Quando i bambini tornano da scuola, di solito giocano nel parco finché i genitori non li chiamano per "
     "la cena. C'è una biblioteca vicino alla stazione dove si possono prendere in prestito libri senza "
     "pagare niente. Penso che il nuovo ponte sarà finito prima della fine dell'anno, ma nessuno lo sa con "
     "certezza. I nostri vicini sono sempre stati molto gentili e spesso ci aiutano con il giardino. Se "
     "vuoi imparare una lingua, devi esercitarti ogni giorno e non avere paura di sbagliare. Il governo ha "
     "annunciato che le tasse aumenteranno ancora, e questo ha fatto arrabbiare molti lavoratori. Lei ha "
     "detto che il treno sarebbe arrivato in ritardo a causa della pioggia e che gli ultimi biglietti erano "
     "già stati venduti."
     " L'estate scorsa mia sorella ha attraversato tutto il paese in autobus perché i voli erano "
     "diventati troppo cari. Ha visitato diverse chiese antiche, ha passato qualche notte da alcuni "
     "amici e ha scritto lettere a tutta la famiglia. Il medico ha detto a mio padre che dovrebbe "
     "camminare di più, bere meno caffè e dormire almeno sette ore ogni notte. Da allora esce tutte "
     "le sere, anche quando piove, e dice che si sente molto meglio. Quale di questi computer "
     "consiglieresti a qualcuno che scrive soprattutto messaggi?"
     " Al lavoro ci stiamo trasferendo in un nuovo ufficio dall'altra parte del fiume, e ognuno deve "
     "sistemare la propria scrivania entro giovedì. Il mio capo continua a dire che il cambiamento "
     "ci farà risparmiare, ma io ne dubito. In autunno il bosco dietro casa nostra diventa giallo e "
     "rosso, e nelle mattine tranquille si sentono i cervi camminare tra gli alberi. Ieri il mio "
     "telefono ha smesso di funzionare, così ho dovuto chiedere a una collega di prestarmi il suo "
     "finché il negozio non fosse riuscito a ripararlo. Sinceramente non ho mai capito perché "
     "questi apparecchi si rompano così facilmente."},
    {"nl",
     "Het weer was vanochtend koud, dus zijn we thuis gebleven om de krant te lezen. De meeste mensen die "
     "in deze stad wonen, werken in de haven of in de kleine winkels aan de hoofdstraat. Als de kinderen "
     "uit school komen, spelen ze meestal in het park totdat hun ouders hen roepen voor het avondeten. Er "
     "is een bibliotheek vlak bij het station waar je boeken kunt lenen zonder iets te betalen. Ik denk dat "
     "de nieuwe brug voor het einde van het jaar klaar zal zijn, maar niemand weet het zeker. Onze buren "
     "zijn altijd erg vriendelijk geweest en ze helpen ons vaak met de tuin. Wie een taal wil leren, moet "
     "elke dag oefenen en niet bang zijn om fouten te maken. De regering heeft aangekondigd dat de "
     "belastingen weer omhoog gaan, waardoor veel werknemers boos zijn geworden. Zij zei dat de trein "
     "vertraging zou hebben vanwege de sneeuw en dat er geen kaartjes meer waren."
     " Afgelopen zomer is mijn zus met de bus door het hele land gereisd, omdat vliegen te duur was "
     "geworden. Ze heeft een paar oude kerken bezocht, een paar nachten bij vrienden gelogeerd en "
     "brieven naar de hele familie geschreven. De dokter zei tegen mijn vader dat hij meer moest "
     "wandelen, minder koffie moest drinken en elke nacht minstens zeven uur moest slapen. Sindsdien "
     "gaat hij elke avond naar buiten, ook als het regent, en hij zegt dat hij zich veel beter voelt. "
     "Welke van deze computers zou je aanraden aan iemand die vooral berichten schrijft?"
     " Op het werk verhuizen we naar een nieuw kantoor aan de andere kant van de rivier, en iedereen "
     "moet voor donderdag zijn eigen bureau inpakken. Mijn baas blijft zeggen dat de verandering geld "
     "zal besparen, maar ik betwijfel het. In de herfst wordt het bos achter ons huis geel en rood, "
     "en op rustige ochtenden hoor je herten tussen de bomen lopen. Gisteren deed mijn telefoon het "
     "niet meer, dus moest ik een collega vragen om mij de hare te lenen totdat de winkel hem kon "
     "repareren. Eerlijk gezegd heb ik nooit begrepen waarom die apparaten zo makkelijk kapotgaan."},
    {"sv",
     "Vädret var kallt i morse, så vi stannade hemma och läste tidningen. De flesta människor som bor i den "
     "här staden arbetar i hamnen eller i de små affärerna längs huvudgatan. När barnen kommer hem från "
     "skolan brukar de leka i parken tills deras föräldrar ropar på dem till middagen. Det finns ett "
     "bibliotek nära stationen där man kan låna böcker utan att betala någonting. Jag tror att den nya bron "
     "blir färdig före årets slut, men ingen vet det säkert. Våra grannar har alltid varit väldigt vänliga "
     "och de hjälper oss ofta med trädgården. Om du vill lära dig ett språk måste du öva varje dag och inte "
     "vara rädd för att göra fel. Regeringen meddelade att skatterna ska höjas igen, vilket gjorde många "
     "arbetare arga. Hon sa att tåget skulle bli försenat på grund av snön och att det inte fanns några "
     "biljetter kvar. Vi undrade vad som skulle hända sedan och om någonting skulle bli bättre."
     " Förra sommaren reste min syster genom hela landet med buss, eftersom flygresorna hade blivit "
     "för dyra. Hon besökte flera gamla kyrkor, sov några nätter hos vänner och skrev brev till "
     "hela familjen. Läkaren sa till min pappa att han borde promenera mer, dricka mindre kaffe och "
     "sova minst sju timmar varje natt. Sedan dess går han ut varje kväll, även när det regnar, "
     "och säger att han mår mycket bättre. Vilken av de här datorerna skulle du rekommendera till "
     "någon som mest skriver meddelanden?"
     " På jobbet flyttar vi till ett nytt kontor på andra sidan ån, och alla måste packa sitt "
     "eget skrivbord före torsdag. Min chef säger hela tiden att flytten kommer att spara pengar, "
     "men det tvivlar jag på. På hösten blir skogen bakom vårt hus gul och röd, och tidiga "
     "stilla morgnar kan man höra rådjur gå mellan träden. I går slutade min telefon att "
     "fungera, så jag fick be en kollega att låna ut sin tills butiken kunde laga den. Ärligt "
     "talat har jag aldrig förstått varför de här apparaterna går sönder så lätt."},
    {"da",
     "Vejret var koldt i morges, så vi blev hjemme og læste avisen. De fleste mennesker, der bor i denne "
     "by, arbejder på havnen eller i de små butikker langs hovedgaden. Når børnene kommer hjem fra skole, "
     "leger de som regel i parken, indtil deres forældre kalder på dem til aftensmad. Der er et bibliotek "
     "tæt på stationen, hvor man kan låne bøger uden at betale noget. Jeg tror, at den nye bro bliver "
     "færdig inden årets udgang, men det er der ingen, der ved med sikkerhed. Vores naboer har altid været "
     "meget venlige, og de hjælper os tit med haven. Hvis du vil lære et sprog, skal du øve dig hver dag og "
     "ikke være bange for at lave fejl. Regeringen meddelte, at skatterne skal stige igen, hvilket gjorde "
     "mange arbejdere vrede. Hun sagde, at toget ville blive forsinket på grund af sneen, og at der ikke "
     "var flere billetter tilbage. Vi spekulerede på, hvad der mon skulle ske bagefter."
     " Sidste sommer rejste min søster gennem hele landet med bus, fordi flybilletterne var blevet "
     "alt for dyre. Hun besøgte flere gamle kirker, overnattede et par nætter hos venner og skrev "
     "breve til hele familien. Lægen sagde til min far, at han skulle gå mere, drikke mindre kaffe "
     "og sove mindst syv timer hver nat. Siden da går han ud hver aften, også når det regner, og "
     "siger, at han har det meget bedre. Hvilken af disse computere vil du anbefale til en, der mest "
     "skriver beskeder?"
     " På arbejdet flytter vi til et nyt kontor på den anden side af åen, og alle skal pakke deres "
     "eget skrivebord sammen inden torsdag. Min chef bliver ved med at sige, at flytningen vil spare "
     "penge, men det tvivler jeg på. Om efteråret bliver skoven bag vores hus gul og rød, og på "
     "stille morgener kan man høre rådyr gå mellem træerne. I går holdt min telefon op med at "
     "virke, så jeg måtte bede en kollega om at låne mig hendes, indtil butikken kunne reparere "
     "den. Ærligt talt har jeg aldrig forstået, hvorfor de apparater går i stykker så nemt."},
    {"no",
     "Været var kaldt i morges, så vi ble hjemme og leste avisen. De fleste menneskene som bor i denne "
     "byen, jobber på havna eller i de små butikkene langs hovedgata. Når barna kommer hjem fra skolen, "
     "leker de vanligvis i parken til foreldrene roper på dem til middag. Det finnes et bibliotek like ved "
     "stasjonen der man kan låne bøker uten å betale noe. Jeg tror at den nye brua blir ferdig før slutten "
     "av året, men det er ingen som vet sikkert. Naboene våre har alltid vært veldig hyggelige, og de "
     "hjelper oss ofte med hagen. Hvis du vil lære et språk, må du øve hver dag og ikke være redd for å "
     "gjøre feil. Regjeringen kunngjorde at skattene skal økes igjen, noe som gjorde mange arbeidere sinte. "
     "Hun sa at toget kom til å bli forsinket på grunn av snøen, og at det ikke var flere billetter igjen. "
     "Vi lurte på hva som kom til å skje etterpå, og om noe ville bli bedre."
     " I fjor sommer reiste søsteren min gjennom hele landet med buss, fordi flybillettene hadde "
     "blitt altfor dyre. Hun besøkte flere gamle kirker, overnattet noen netter hos venner og skrev "
     "brev til hele familien. Legen sa til faren min at han burde gå mer, drikke mindre kaffe og "
     "sove minst sju timer hver natt. Siden da har han gått ut hver kveld, også når det regner, og "
     "sier at han føler seg mye bedre. Hvilken av disse datamaskinene vil du anbefale til en som "
     "stort sett skriver meldinger?"
     " På jobben flytter vi til et nytt kontor på den andre siden av elva, og alle må pakke ned "
     "sin egen pult før torsdag. Sjefen min sier hele tiden at flyttingen skal spare penger, men det "
     "tviler jeg på. Om høsten blir skogen bak huset vårt gul og rød, og på stille morgener kan "
     "man høre rådyr gå mellom trærne. I går sluttet telefonen min å virke, så jeg måtte be "
     "en kollega om å låne meg hennes til butikken fikk reparert den. Ærlig talt har jeg aldri "
     "skjønt hvorfor disse apparatene går i stykker så lett."},
    {"fi",
     "Sää oli tänä aamuna kylmä, joten jäimme kotiin lukemaan sanomalehteä. Useimmat tässä kaupungissa "
     "asuvat ihmiset työskentelevät satamassa tai pääkadun varrella olevissa pienissä kaupoissa. Kun "
     "lapset tulevat koulusta kotiin, he leikkivät yleensä puistossa, kunnes vanhemmat kutsuvat heidät "
     "syömään. Aseman lähellä on kirjasto, josta voi lainata kirjoja maksamatta mitään. Luulen, että uusi "
     "silta valmistuu ennen vuoden loppua, mutta kukaan ei tiedä sitä varmasti. Naapurimme ovat aina "
     "olleet hyvin ystävällisiä, ja he auttavat meitä usein puutarhassa. Jos haluat oppia kieltä, sinun "
     "täytyy harjoitella joka päivä eikä pelätä virheitä. Hallitus ilmoitti, että verot nousevat taas, "
     "mikä suututti monia työntekijöitä. Hän sanoi, että juna myöhästyy lumen takia ja että lippuja ei "
     "ollut enää jäljellä. Mietimme, mitä seuraavaksi tapahtuisi ja muuttuisiko mikään paremmaksi."
     " Viime kesänä siskoni matkusti koko maan halki bussilla, koska lennot olivat muuttuneet liian "
     "kalliiksi. Hän kävi katsomassa useita vanhoja kirkkoja, vietti muutaman yön ystäviensä "
     "luona ja kirjoitti kirjeitä koko perheelle. Lääkäri sanoi isälleni, että hänen pitäisi "
     "kävellä enemmän, juoda vähemmän kahvia ja nukkua joka yö vähintään seitsemän tuntia. "
     "Siitä lähtien hän on käynyt ulkona joka ilta, myös sateella, ja sanoo voivansa paljon "
     "paremmin. Minkä näistä tietokoneista suosittelisit ihmiselle, joka lähinnä kirjoittaa "
     "viestejä?"
     " Töissä muutamme uuteen toimistoon joen toiselle puolelle, ja jokaisen täytyy pakata oma "
     "työpöytänsä ennen torstaita. Esimieheni toistelee, että muutto säästää rahaa, mutta "
     "epäilen sitä. Syksyllä talomme takana oleva metsä muuttuu keltaiseksi ja punaiseksi, ja "
     "hiljaisina aamuina kuulee peurojen kävelevän puiden välissä. Eilen puhelimeni lakkasi "
     "toimimasta, joten minun piti pyytää työkaveria lainaamaan omaansa, kunnes liike saisi sen "
     "korjattua. Rehellisesti sanottuna en ole koskaan ymmärtänyt, miksi nämä laitteet hajoavat "
     "niin helposti."},
    {"pl",
     "Dziś rano była zimna pogoda, więc zostaliśmy w domu i czytaliśmy gazetę. Większość ludzi, którzy "
     "mieszkają w tym mieście, pracuje w porcie albo w małych sklepach przy głównej ulicy. Kiedy dzieci "
     "wracają ze szkoły, zwykle bawią się w parku, dopóki rodzice nie zawołają ich na kolację. Niedaleko "
     "dworca jest biblioteka, w której można wypożyczyć książki bez żadnych opłat. Myślę, że nowy most "
     "będzie gotowy przed końcem roku, ale nikt tego nie wie na pewno. Nasi sąsiedzi zawsze byli bardzo "
     "życzliwi i często pomagają nam w ogrodzie. Jeśli chcesz nauczyć się języka, musisz ćwiczyć "
     "codziennie i nie bać się błędów. Rząd ogłosił, że podatki znowu wzrosną, co zdenerwowało wielu "
     "pracowników. Powiedziała, że pociąg się spóźni z powodu śniegu i że nie ma już biletów. "
     "Zastanawialiśmy się, co się stanie potem i czy cokolwiek zmieni się na lepsze."
     " Zeszłego lata moja siostra przejechała cały kraj autobusem, bo loty zrobiły się zbyt "
     "drogie. Zwiedziła kilka starych kościołów, spędziła parę nocy u przyjaciół i napisała "
     "listy do całej rodziny. Lekarz powiedział mojemu ojcu, że powinien więcej chodzić, pić "
     "mniej kawy i spać co najmniej siedem godzin każdej nocy. Od tamtej pory wychodzi na spacer "
     "każdego wieczoru, nawet kiedy pada deszcz, i mówi, że czuje się dużo lepiej. Który z tych "
     "komputerów poleciłbyś komuś, kto głównie pisze wiadomości?"
     " W pracy przeprowadzamy się do nowego biura po drugiej stronie rzeki i każdy musi spakować "
     "swoje biurko przed czwartkiem. Mój szef ciągle powtarza, że ta zmiana pozwoli zaoszczędzić "
     "pieniądze, ale wątpię w to. Jesienią las za naszym domem robi się żółty i czerwony, a w "
     "ciche poranki słychać sarny chodzące między drzewami. Wczoraj mój telefon przestał "
     "działać, więc musiałem poprosić koleżankę, żeby pożyczyła mi swój, dopóki sklep go "
     "nie naprawi. Szczerze mówiąc, nigdy nie rozumiałem, dlaczego te urządzenia tak łatwo się "
     "psują."},
    {"cs",
     "Dnes ráno bylo chladné počasí, a tak jsme zůstali doma a četli noviny. Většina lidí, kteří bydlí v "
     "tomto městě, pracuje v přístavu nebo v malých obchodech na hlavní ulici. Když se děti vrátí ze "
     "školy, obvykle si hrají v parku, dokud je rodiče nezavolají k večeři. Nedaleko nádraží je knihovna, "
     "kde si můžete půjčit knihy a nic za to neplatíte. Myslím, že nový most bude hotový před koncem roku, "
     "ale nikdo to neví jistě. Naši sousedé byli vždycky velmi přátelští a často nám pomáhají se zahradou. "
     "Pokud se chceš naučit nějaký jazyk, musíš cvičit každý den a nebát se chyb. Vláda oznámila, že daně "
     "zase porostou, což rozzlobilo mnoho pracujících. Řekla, že vlak bude mít zpoždění kvůli sněhu a že "
     "už nejsou žádné jízdenky. Přemýšleli jsme, co se stane potom a jestli se něco změní k lepšímu."
     " Loni v létě moje sestra projela celou zemi autobusem, protože letenky byly příliš "
     "drahé. Navštívila několik starých kostelů, strávila pár nocí u přátel a napsala "
     "dopisy celé rodině. Lékař řekl mému otci, že by měl víc chodit, pít méně kávy a "
     "spát každou noc alespoň sedm hodin. Od té doby chodí ven každý večer, i když prší, a "
     "říká, že se cítí mnohem lépe. Který z těchto počítačů byste doporučili někomu, "
     "kdo hlavně píše zprávy?"
     " V práci se stěhujeme do nové kanceláře na druhé straně řeky a každý si musí do "
     "čtvrtka sbalit svůj vlastní stůl. Můj vedoucí pořád opakuje, že nám ta změna "
     "ušetří peníze, ale o tom pochybuji. Na podzim les za naším domem zežloutne a zčervená "
     "a za tichých rán je slyšet, jak mezi stromy chodí srnky. Včera mi přestal fungovat "
     "telefon, takže jsem musel poprosit kolegyni, aby mi půjčila svůj, dokud ho v obchodě "
     "neopraví. Upřímně řečeno jsem nikdy nepochopil, proč se tyhle přístroje tak snadno "
     "rozbijí."},
    {"ro",
     "Vremea a fost rece în această dimineață, așa că am rămas acasă și am citit ziarul. Cei mai mulți "
     "oameni care locuiesc în acest oraș lucrează în port sau în magazinele mici de pe strada principală. "
     "Când copiii se întorc de la școală, de obicei se joacă în parc până când părinții îi cheamă la cină. "
     "Există o bibliotecă lângă gară de unde poți împrumuta cărți fără să plătești nimic. Cred că noul pod "
     "va fi gata înainte de sfârșitul anului, dar nimeni nu știe sigur. Vecinii noștri au fost întotdeauna "
     "foarte amabili și ne ajută adesea în grădină. Dacă vrei să înveți o limbă, trebuie să exersezi în "
     "fiecare zi și să nu îți fie frică de greșeli. Guvernul a anunțat că taxele vor crește din nou, ceea "
     "ce i-a supărat pe mulți muncitori. Ea a spus că trenul va întârzia din cauza zăpezii și că nu mai "
     "sunt bilete. Ne întrebam ce se va întâmpla mai departe și dacă ceva se va schimba în bine."
     " Vara trecută sora mea a străbătut toată țara cu autobuzul, pentru că zborurile "
     "deveniseră prea scumpe. A vizitat mai multe biserici vechi, a petrecut câteva nopți la "
     "niște prieteni și a scris scrisori întregii familii. Medicul i-a spus tatălui meu că ar "
     "trebui să meargă mai mult pe jos, să bea mai puțină cafea și să doarmă cel puțin "
     "șapte ore în fiecare noapte. De atunci iese în fiecare seară, chiar și când plouă, și "
     "spune că se simte mult mai bine. Pe care dintre aceste calculatoare l-ai recomanda cuiva care "
     "scrie mai ales mesaje?"
     " La serviciu ne mutăm într-un birou nou de cealaltă parte a râului și fiecare trebuie să "
     "își strângă propriul birou până joi. Șeful meu tot spune că schimbarea ne va economisi "
     "bani, dar mă îndoiesc. Toamna pădurea din spatele casei noastre devine galbenă și roșie, "
     "iar în diminețile liniștite se aud căprioarele mergând printre copaci. Ieri telefonul meu "
     "s-a oprit din funcționat, așa că a trebuit să o rog pe o colegă să mi-l împrumute pe al "
     "ei până când magazinul îl putea repara. Sincer, nu am înțeles niciodată de ce aceste "
     "aparate se strică atât de ușor."},
    {"hu",
     "Ma reggel hideg volt az idő, ezért otthon maradtunk és újságot olvastunk. A városban élő emberek "
     "többsége a kikötőben vagy a főutca kis üzleteiben dolgozik. Amikor a gyerekek hazaérnek az "
     "iskolából, általában a parkban játszanak, amíg a szüleik vacsorázni nem hívják őket. Az állomás "
     "közelében van egy könyvtár, ahol ingyen lehet könyveket kölcsönözni. Azt hiszem, hogy az új híd az "
     "év vége előtt elkészül, de ezt senki sem tudja biztosan. A szomszédaink mindig nagyon kedvesek "
     "voltak, és gyakran segítenek nekünk a kertben. Ha meg akarsz tanulni egy nyelvet, minden nap "
     "gyakorolnod kell, és nem szabad félned a hibáktól. A kormány bejelentette, hogy az adók ismét "
     "emelkednek, ami sok munkást feldühített. Azt mondta, hogy a vonat a hó miatt késni fog, és hogy már "
     "nincsenek jegyek. Azon gondolkodtunk, mi fog ezután történni, és változik-e bármi jobbra."
     " Tavaly nyáron a húgom busszal utazta be az egész országot, mert a repülőjegyek túl "
     "drágák lettek. Meglátogatott több régi templomot, néhány éjszakát a barátainál "
     "töltött, és levelet írt az egész családnak. Az orvos azt mondta apámnak, hogy többet "
     "kellene sétálnia, kevesebb kávét kellene innia, és minden éjjel legalább hét órát "
     "kellene aludnia. Azóta minden este kimegy, akkor is, ha esik az eső, és azt mondja, hogy "
     "sokkal jobban érzi magát. Ezek közül melyik számítógépet ajánlanád valakinek, aki "
     "főleg üzeneteket ír?"
     " A munkahelyemen új irodába költözünk a folyó túlsó partjára, és mindenkinek "
     "csütörtökig össze kell pakolnia a saját asztalát. A főnököm folyton azt mondja, hogy a "
     "költözéssel pénzt spórolunk, de ebben kételkedem. Ősszel a házunk mögötti erdő "
     "sárgára és pirosra változik, és a csendes reggeleken hallani, ahogy az őzek a fák "
     "között járnak. Tegnap a telefonom nem működött tovább, ezért meg kellett kérnem egy "
     "kolléganőmet, hogy kölcsönadja az övét, amíg a boltban meg nem javítják. Őszintén "
     "szólva sosem értettem, miért romlanak el ilyen könnyen ezek a készülékek."},
    {"tr",
     "Bu sabah hava soğuktu, bu yüzden evde kalıp gazete okuduk. Bu şehirde yaşayan insanların çoğu "
     "limanda ya da ana caddedeki küçük dükkânlarda çalışıyor. Çocuklar okuldan eve döndüklerinde, "
     "anneleri ve babaları onları akşam yemeğine çağırana kadar genellikle parkta oynarlar. İstasyonun "
     "yakınında hiçbir ücret ödemeden kitap ödünç alabileceğiniz bir kütüphane var. Bence yeni köprü yıl "
     "bitmeden tamamlanacak, ama kimse bunu kesin olarak bilmiyor. Komşularımız her zaman çok nazik oldu "
     "ve bize sık sık bahçede yardım ediyorlar. Bir dil öğrenmek istiyorsan her gün pratik yapmalı ve hata "
     "yapmaktan korkmamalısın. Hükümet vergilerin yeniden artacağını açıkladı, bu da birçok işçiyi "
     "kızdırdı. Karın yüzünden trenin gecikeceğini ve hiç bilet kalmadığını söyledi. Bundan sonra neler "
     "olacağını ve bir şeylerin daha iyiye gidip gitmeyeceğini düşünüyorduk."
     " Geçen yaz kız kardeşim, uçak biletleri çok pahalı hale geldiği için bütün ülkeyi "
     "otobüsle dolaştı. Birkaç eski kiliseyi gezdi, birkaç geceyi arkadaşlarının yanında "
     "geçirdi ve bütün aileye mektuplar yazdı. Doktor babama daha çok yürümesi, daha az kahve "
     "içmesi ve her gece en az yedi saat uyuması gerektiğini söyledi. O zamandan beri yağmur "
     "yağsa bile her akşam dışarı çıkıyor ve kendini çok daha iyi hissettiğini söylüyor. "
     "Çoğunlukla mesaj yazan birine bu bilgisayarlardan hangisini önerirsin?"
     " İş yerinde nehrin öbür tarafındaki yeni bir ofise taşınıyoruz ve herkesin perşembeden "
     "önce kendi masasını toplaması gerekiyor. Müdürüm bu değişikliğin para tasarrufu "
     "sağlayacağını söyleyip duruyor, ama ben bundan şüpheliyim. Sonbaharda evimizin "
     "arkasındaki orman sararıp kızarır ve sakin sabahlarda ağaçların arasında yürüyen "
     "geyiklerin sesi duyulur. Dün telefonum çalışmayı bıraktı, bu yüzden dükkân onu tamir "
     "edene kadar bir iş arkadaşımdan onunkini ödünç vermesini rica etmek zorunda kaldım. "
     "Açıkçası bu cihazların neden bu kadar kolay bozulduğunu hiçbir zaman anlamadım."},
    {"id",
     "Cuaca pagi ini dingin, jadi kami tetap di rumah dan membaca koran. Sebagian besar orang yang tinggal "
     "di kota ini bekerja di pelabuhan atau di toko-toko kecil di sepanjang jalan utama. Ketika anak-anak "
     "pulang dari sekolah, mereka biasanya bermain di taman sampai orang tua mereka memanggil untuk makan "
     "malam. Ada perpustakaan di dekat stasiun tempat Anda bisa meminjam buku tanpa membayar apa pun. Saya "
     "kira jembatan baru itu akan selesai sebelum akhir tahun, tetapi tidak ada yang tahu pasti. Tetangga "
     "kami selalu sangat ramah dan sering membantu kami merawat kebun. Kalau kamu ingin belajar bahasa, "
     "kamu harus berlatih setiap hari dan tidak takut membuat kesalahan. Pemerintah mengumumkan bahwa "
     "pajak akan naik lagi, sehingga banyak karyawan menjadi marah. Dia bilang keretanya akan terlambat "
     "karena hujan dan tiketnya sudah habis. Kami bertanya-tanya apa yang akan terjadi nanti dan apakah "
     "keadaan akan menjadi lebih baik."
     " Musim liburan tahun lalu adik perempuan saya berkeliling ke seluruh negeri naik bus karena "
     "tiket pesawat menjadi terlalu mahal. Dia mengunjungi beberapa gereja tua, menginap beberapa "
     "malam di rumah teman-temannya, dan menulis surat untuk seluruh keluarga. Dokter bilang kepada "
     "ayah saya bahwa dia harus lebih banyak berjalan kaki, mengurangi minum kopi, dan tidur paling "
     "sedikit tujuh jam setiap malam. Sejak itu dia keluar rumah setiap sore, bahkan ketika sedang "
     "hujan, dan katanya dia merasa jauh lebih sehat. Komputer mana yang akan kamu sarankan untuk "
     "orang yang kebanyakan hanya menulis pesan? Nggak usah yang mahal, yang penting bisa dipakai."
     " Di kantor, kami akan pindah ke gedung baru di seberang sungai, dan setiap orang harus mengemas "
     "meja kerjanya sendiri sebelum hari Kamis. Atasan saya terus bilang bahwa perubahan ini bakal "
     "menghemat uang, tapi saya ragu. Pada musim kemarau, hutan di belakang rumah kami menjadi kering "
     "dan kecokelatan, dan pada pagi yang sepi kita bisa mendengar rusa berjalan di antara pepohonan. "
     "Kemarin ponsel saya tiba-tiba mati, jadi saya terpaksa minta tolong ke teman sekantor untuk "
     "meminjamkan ponselnya sampai tokonya selesai memperbaiki punya saya. Jujur saja, saya nggak "
     "pernah mengerti kenapa barang-barang seperti ini gampang sekali rusak."},
    {"ms",
     "Cuaca pagi tadi sejuk, jadi kami tinggal di rumah dan membaca akhbar. Kebanyakan orang yang tinggal "
     "di bandar ini bekerja di pelabuhan atau di kedai-kedai kecil di sepanjang jalan besar. Apabila "
     "kanak-kanak balik dari sekolah, mereka biasanya bermain di taman sehingga ibu bapa mereka memanggil "
     "mereka untuk makan malam. Terdapat sebuah perpustakaan berhampiran stesen di mana anda boleh "
     "meminjam buku secara percuma. Saya rasa jambatan baharu itu akan siap sebelum hujung tahun, tetapi "
     "tiada sesiapa yang tahu dengan pasti. Jiran kami sentiasa peramah dan selalu menolong kami di kebun. "
     "Jika anda mahu belajar sesuatu bahasa, anda perlu berlatih setiap hari dan jangan takut membuat "
     "kesilapan. Kerajaan mengumumkan bahawa cukai akan dinaikkan lagi, dan ini menyebabkan ramai pekerja "
     "berasa marah. Dia berkata kereta api itu akan lewat kerana hujan lebat dan tiket sudah habis dijual. "
     "Kami tertanya-tanya apa yang akan berlaku selepas ini dan sama ada keadaan akan bertambah baik."
     " Pada cuti tahun lepas, adik perempuan saya mengembara ke seluruh negara dengan menaiki bas "
     "kerana tambang kapal terbang sudah terlalu mahal. Dia melawat beberapa buah gereja lama, "
     "bermalam beberapa hari di rumah kawan-kawannya dan menulis surat kepada seluruh keluarga. "
     "Doktor memberitahu ayah saya bahawa beliau perlu lebih banyak berjalan kaki, kurangkan minum "
     "kopi dan tidur sekurang-kurangnya tujuh jam setiap malam. Sejak itu beliau keluar setiap "
     "petang, walaupun hari hujan, dan berkata bahawa beliau berasa jauh lebih sihat. Komputer yang "
     "manakah akan anda cadangkan kepada seseorang yang kebanyakannya hanya menulis mesej? Tak "
     "perlulah yang mahal, asalkan boleh digunakan dengan baik."
     " Di pejabat, kami akan berpindah ke bangunan baharu di seberang sungai, dan setiap orang perlu "
     "mengemas meja masing-masing sebelum hari Khamis. Pengurus saya asyik berkata bahawa perubahan "
     "ini akan menjimatkan wang, tetapi saya meraguinya. Semasa musim kemarau, hutan di belakang "
     "rumah kami menjadi kering dan keperangan, dan pada waktu pagi yang sunyi kita boleh mendengar "
     "rusa berjalan di celah-celah pokok. Semalam telefon bimbit saya tidak boleh berfungsi, jadi "
     "saya terpaksa meminta rakan sepejabat meminjamkan telefonnya sehingga kedai itu selesai "
     "membaiki telefon saya. Terus terang, saya tidak pernah faham mengapa barang-barang begini mudah "
     "sangat rosak."},
    {"vi",
     "Sáng nay trời lạnh nên chúng tôi ở nhà đọc báo. Phần lớn những người sống ở thành phố này làm việc "
     "ở cảng hoặc trong các cửa hàng nhỏ trên con phố chính. Khi trẻ em đi học về, chúng thường chơi trong "
     "công viên cho đến khi bố mẹ gọi về ăn tối. Có một thư viện gần nhà ga, nơi bạn có thể mượn sách mà "
     "không phải trả tiền. Tôi nghĩ rằng cây cầu mới sẽ được hoàn thành trước cuối năm, nhưng không ai "
     "biết chắc chắn. Hàng xóm của chúng tôi luôn rất thân thiện và thường giúp chúng tôi làm vườn. Nếu "
     "bạn muốn học một ngôn ngữ, bạn phải luyện tập mỗi ngày và không sợ mắc lỗi. Chính phủ thông báo "
     "rằng thuế sẽ lại tăng, khiến nhiều người lao động tức giận. Cô ấy nói rằng tàu sẽ bị trễ vì mưa và "
     "đã hết vé. Chúng tôi tự hỏi điều gì sẽ xảy ra tiếp theo và liệu mọi thứ có tốt hơn không."
     " Mùa hè năm ngoái, em gái tôi đã đi khắp đất nước bằng xe buýt vì vé máy "
     "bay đã trở nên quá đắt. Cô ấy thăm nhiều nhà thờ cổ, ngủ lại vài đêm "
     "ở nhà bạn bè và viết thư cho cả gia đình. Bác sĩ bảo bố tôi rằng ông "
     "nên đi bộ nhiều hơn, uống ít cà phê hơn và ngủ ít nhất bảy tiếng mỗi "
     "đêm. Từ đó ông ra ngoài mỗi buổi tối, ngay cả khi trời mưa, và nói rằng "
     "ông cảm thấy khỏe hơn nhiều. Bạn sẽ giới thiệu chiếc máy tính nào cho "
     "người chủ yếu chỉ viết tin nhắn?"
     " Ở công ty, chúng tôi sắp chuyển đến một văn phòng mới ở bên kia sông, "
     "và mỗi người phải tự dọn bàn làm việc của mình trước thứ năm. Sếp "
     "của tôi cứ nói rằng việc chuyển đi sẽ tiết kiệm được tiền, nhưng tôi "
     "không tin lắm. Vào mùa thu, khu rừng phía sau nhà chúng tôi chuyển sang màu vàng "
     "và đỏ, và vào những buổi sáng yên tĩnh có thể nghe thấy tiếng hươu đi "
     "giữa những hàng cây. Hôm qua điện thoại của tôi bị hỏng, nên tôi phải "
     "nhờ một đồng nghiệp cho mượn máy của chị ấy cho đến khi cửa hàng sửa "
     "xong. Thật lòng mà nói, tôi chưa bao giờ hiểu tại sao những thiết bị này "
     "lại dễ hỏng như vậy."},
    {"ru",
     "Сегодня утром было холодно, поэтому мы остались дома и читали газету. Большинство людей, которые "
     "живут в этом городе, работают в порту или в маленьких магазинах на главной улице. Когда дети "
     "возвращаются из школы, они обычно играют в парке, пока родители не позовут их ужинать. Рядом с "
     "вокзалом есть библиотека, где можно взять книги и ничего не платить. Я думаю, что новый мост "
     "построят до конца года, но точно этого никто не знает. Наши соседи всегда были очень добрыми и "
     "часто помогают нам в саду. Если ты хочешь выучить язык, нужно заниматься каждый день и не бояться "
     "ошибок. Правительство объявило, что налоги снова вырастут, и это рассердило многих рабочих. Она "
     "сказала, что поезд опоздает из-за снега и что билетов больше нет. Мы думали о том, что будет "
     "дальше и изменится ли что-нибудь к лучшему."
     " Прошлым летом моя сестра проехала всю страну на "
     "автобусе, потому что авиабилеты стали слишком "
     "дорогими. Она посетила несколько старых церквей, "
     "провела пару ночей у друзей и написала письма всей "
     "семье. Врач сказал моему отцу, что ему нужно больше "
     "ходить пешком, пить меньше кофе и спать не меньше "
     "семи часов каждую ночь. С тех пор он выходит на улицу "
     "каждый вечер, даже когда идёт дождь, и говорит, что "
     "чувствует себя гораздо лучше. Какой из этих "
     "компьютеров вы бы посоветовали человеку, который в "
     "основном пишет сообщения? Ещё он спрашивал, сколько "
     "стоит ремонт и где его можно сделать."
     " На работе мы переезжаем в новый офис на другом "
     "берегу реки, и каждый должен до четверга собрать "
     "свой рабочий стол. Мой начальник всё время "
     "повторяет, что переезд поможет сэкономить деньги, "
     "но я в этом сомневаюсь. Осенью лес за нашим домом "
     "становится жёлтым и красным, а тихим утром слышно, "
     "как между деревьями ходят олени. Вчера мой телефон "
     "перестал работать, поэтому мне пришлось попросить "
     "коллегу одолжить мне свой, пока в мастерской его не "
     "починят. Честно говоря, я никогда не понимал, почему "
     "эти устройства так легко ломаются. Мы ещё немного "
     "поговорили об этом, а потом разошлись по домам."},
    {"uk",
     "Сьогодні вранці було холодно, тому ми залишилися вдома і читали газету. Більшість людей, які живуть "
     "у цьому місті, працюють у порту або в невеликих крамницях на головній вулиці. Коли діти повертаються "
     "зі школи, вони зазвичай граються в парку, доки батьки не покличуть їх вечеряти. Біля вокзалу є "
     "бібліотека, де можна позичити книжки й нічого не платити. Я думаю, що новий міст збудують до кінця "
     "року, але напевно цього ніхто не знає. Наші сусіди завжди були дуже привітними і часто допомагають "
     "нам у саду. Якщо ти хочеш вивчити мову, треба займатися щодня і не боятися помилок. Уряд оголосив, "
     "що податки знову зростуть, і це розсердило багатьох робітників. Вона сказала, що потяг запізниться "
     "через сніг і що квитків більше немає. Ми думали про те, що буде далі і чи зміниться щось на краще."
     " Минулого літа моя сестра проїхала всю країну "
     "автобусом, бо квитки на літак стали надто дорогими. "
     "Вона відвідала кілька старовинних церков, провела "
     "декілька ночей у друзів і написала листи всій "
     "родині. Лікар сказав моєму батькові, що йому треба "
     "більше ходити пішки, пити менше кави і спати "
     "щонайменше сім годин щоночі. Відтоді він щовечора "
     "виходить надвір, навіть коли йде дощ, і каже, що "
     "почувається набагато краще. Який із цих комп'ютерів "
     "ви б порадили людині, що здебільшого пише "
     "повідомлення? Ще він питав, скільки коштує ремонт і "
     "де його можна зробити, бо його старий ноутбук уже "
     "ледь працює."
     " На роботі ми переїжджаємо до нового офісу на іншому "
     "березі річки, і кожен має до четверга зібрати свій "
     "робочий стіл. Мій керівник постійно повторює, що "
     "переїзд допоможе заощадити гроші, але я в цьому "
     "сумніваюся. Восени ліс за нашим будинком стає "
     "жовтим і червоним, а тихого ранку чути, як між "
     "деревами ходять олені. Учора мій телефон перестав "
     "працювати, тож мені довелося попросити колегу "
     "позичити мені свій, поки в майстерні його не "
     "полагодять. Чесно кажучи, я ніколи не розумів, чому "
     "ці пристрої так легко ламаються. Ми ще трохи "
     "поговорили про це, а потім розійшлися по домівках."},
};

}  // namespace readerkit::detail
