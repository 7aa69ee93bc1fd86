print('');
var w = 2;
while (w > 0) {
w--;
var w19 = 0;
do {
w19 += 1;
} while (w19 < 4);
}
w = /[0-9]+/g;
;
;
let y = w;
++y;
y++;
var count5 = async function () {
return await 'hello';
};
++count5;
w++;
